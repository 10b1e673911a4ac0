double x, y, z;

int main(void)
{
  x = 1.5;
  y = x * 4.0 - 0.25;
  z = y / 2.0;
  return 0;
}
