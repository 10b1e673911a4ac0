int i, odd;

int main(void)
{
  odd = 0;
  for (i = 0; i < 10; i++) {
    if (i % 2 == 0) continue;
    odd = odd + i;
  }
  return 0;
}
