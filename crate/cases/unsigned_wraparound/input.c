unsigned int u;
int big;

int main(void)
{
  u = 0;
  u = u - 1;
  big = u > 100;
  return 0;
}
