int *p;
int x, hit;

int main(void)
{
  p = 0;
  hit = 0;
  if (p == 0) hit = 1;
  p = &x;
  if (p != 0) hit = hit + 2;
  return 0;
}
