int a, b, c;

int main(void)
{
  a = 3;
  b = a * 4;
  c = b - a;
  return 0;
}
