int x, y;

int main(void)
{
  x = (y + 1, 2);
  return 0;
}
