int i, n;

int main(void)
{
  i = 0;
  n = 0;
  while (i < 10) {
    if (i == 4) break;
    n = n + i;
    i++;
  }
  return n;
}
