int r;

int fact(int n)
{
  if (n <= 1) return 1;
  return n * fact(n - 1);
}

int main(void)
{
  r = fact(10);
  return 0;
}
