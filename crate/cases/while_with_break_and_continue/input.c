int i, s;

int main(void)
{
  i = 0;
  s = 0;
  while (i < 100) {
    i++;
    if (i % 3 == 0) continue;
    if (i > 10) break;
    s = s + i;
  }
  return 0;
}
