int x, y;

int main(void)
{
  if ((x = y) > 0) y = 1;
  return 0;
}
