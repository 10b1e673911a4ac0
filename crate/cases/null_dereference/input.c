int *p;
int x;

int main(void)
{
  p = 0;
  x = *p;
  return 0;
}
