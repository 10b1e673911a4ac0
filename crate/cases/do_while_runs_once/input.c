int x, n;

int main(void)
{
  x = 10;
  n = 0;
  do {
    n++;
    x++;
  } while (x < 5);
  return 0;
}
