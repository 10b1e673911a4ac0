int r;

int twice(int v)
{
  return v + v;
}

int main(void)
{
  r = twice(21);
  return 0;
}
