extern int getv(void);
int a, b;

int main(void)
{
  a = getv();
  b = getv() * 10;
  return 0;
}
