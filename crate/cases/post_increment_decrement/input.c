int x, y;

int main(void)
{
  x = 1;
  x++;
  x++;
  y = 5;
  y--;
  return 0;
}
