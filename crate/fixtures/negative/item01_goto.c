int x;

int main(void)
{
  x = 0;
again:
  x++;
  if (x < 3) goto again;
  return 0;
}
