int i, s;

int main(void)
{
  i = 0;
  s = 0;
  while (i < 5) {
    s = s + i * i;
    i++;
  }
  return 0;
}
