char src[6] = {'h', 'e', 'l', 'l', 'o', 0};
char dst[6];
int n;

int main(void)
{
  n = 0;
  while (src[n] != 0) {
    dst[n] = src[n] - 32;
    n++;
  }
  dst[n] = 0;
  return n;
}
