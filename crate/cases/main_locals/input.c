int main(void)
{
  int a, b;
  a = 6;
  b = a * 7;
  return b;
}
