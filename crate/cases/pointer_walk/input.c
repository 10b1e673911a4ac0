int a[4] = {3, 1, 4, 1};
int *p;
int s, k;

int main(void)
{
  s = 0;
  p = &a[0];
  for (k = 0; k < 4; k++) {
    s = s + *p;
    p = p + 1;
  }
  return 0;
}
