int i, s;

int main(void)
{
  s = 0;
  for (i = 1; i <= 10; i++) s = s + i;
  return 0;
}
