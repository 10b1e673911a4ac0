int x, y, z;

int main(void)
{
  x = y = z;
  return 0;
}
