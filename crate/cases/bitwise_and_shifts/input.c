int a, b, c, d, e;

int main(void)
{
  a = 12 & 10;
  b = 12 | 3;
  c = 12 ^ 5;
  d = 1 << 10;
  e = ~0;
  return 0;
}
