int x;

int main(void)
{
  int x;
  x = 4;
  return x;
}
