extern void tick(int n);
int n;

int main(void)
{
  n = 0;
  while (1) {
    tick(n);
    n++;
  }
  return 0;
}
