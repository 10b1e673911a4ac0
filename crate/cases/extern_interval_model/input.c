extern void tick(int n);
int x;

int main(void)
{
  x = 1;
  tick(x);
  x = 2;
  tick(x);
  return 0;
}
