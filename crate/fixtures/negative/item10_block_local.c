int main(void)
{
  int x;
  x = 1;
  if (x) {
    int y;
    y = x;
  }
  return 0;
}
