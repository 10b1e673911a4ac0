int i, last;
unsigned char yy[8];

int main(void)
{
  last = 6;
  for (i = 0; i <= last; i++) {
    if (yy[i] == 0) break;
  }
  return 0;
}
