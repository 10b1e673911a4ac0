int t, f, n;

int main(void)
{
  t = 3 && 4;
  f = 0 || 0;
  n = !5;
  return 0;
}
