char c, d;
int diff;

int main(void)
{
  c = 'a';
  d = c + 2;
  diff = d - 'a';
  return 0;
}
