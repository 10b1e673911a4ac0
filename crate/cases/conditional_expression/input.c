int a, b, mx, mn;

int main(void)
{
  a = 8;
  b = 13;
  mx = a > b ? a : b;
  mn = a < b ? a : b;
  return 0;
}
