int a, b;

int main(void)
{
  a = 0;
  b = 0;
  while (1) {
    a = 1;
    break;
    b = 1;
  }
  return 0;
}
