int x;

int main(void)
{
  x = 0;
  if (x == 1) x = 7;
  if (x == 0) x = 9;
  return 0;
}
