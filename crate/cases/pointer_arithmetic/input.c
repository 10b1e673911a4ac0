int a[5] = {10, 20, 30, 40, 50};
int *p, *q;
int d, v;

int main(void)
{
  p = &a[1];
  q = p + 3;
  d = q - p;
  v = *(p + 2) + p[1];
  return 0;
}
