int r;

int fib(int n)
{
  if (n < 2) return n;
  return fib(n - 1) + fib(n - 2);
}

int main(void)
{
  r = fib(12);
  return 0;
}
