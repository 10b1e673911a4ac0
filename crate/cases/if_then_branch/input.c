int x, y;

int main(void)
{
  x = 5;
  if (x > 3) {
    y = 1;
  } else {
    y = 2;
  }
  return 0;
}
