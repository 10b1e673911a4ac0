int x, z;

int main(void)
{
  z = 0;
  x = 10 / z;
  return 0;
}
