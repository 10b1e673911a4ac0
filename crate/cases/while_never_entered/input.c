int i;

int main(void)
{
  i = 9;
  while (i < 5) {
    i = 100;
  }
  return 0;
}
