char c;
unsigned char u;

int main(void)
{
  c = 127;
  c = c + 1;
  u = 250;
  u = u + 10;
  return 0;
}
