int x;

int main(void)
{
  x = 0;
  do {
    x = x + 3;
  } while (x < 10);
  return 0;
}
