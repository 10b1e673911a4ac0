int r;

int gcd(int a, int b)
{
  int t;
  while (b != 0) {
    t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int main(void)
{
  r = gcd(1071, 462);
  return 0;
}
