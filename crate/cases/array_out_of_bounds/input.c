int a[3];
int i;

int main(void)
{
  for (i = 0; i <= 3; i++) a[i] = i;
  return 0;
}
