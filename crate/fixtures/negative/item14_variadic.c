int sum(int n, ...)
{
  return n;
}

int main(void)
{
  return 0;
}
