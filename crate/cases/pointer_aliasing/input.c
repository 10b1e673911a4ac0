int x, y;
int *p;

int main(void)
{
  x = 1;
  p = &x;
  *p = 5;
  y = *p + x;
  return 0;
}
