int i;
char c;
double d;

int main(void)
{
  d = 3.75;
  i = (int)d;
  c = (char)300;
  d = (double)i / 2.0;
  return 0;
}
