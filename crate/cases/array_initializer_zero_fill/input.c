int a[5] = {1, 2};
int s, i;

int main(void)
{
  s = 0;
  for (i = 0; i < 5; i++) s = s * 10 + a[i];
  return 0;
}
