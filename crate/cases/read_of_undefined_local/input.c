int r;

int main(void)
{
  int u;
  r = u + 1;
  return 0;
}
