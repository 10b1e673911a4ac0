int k, r;

int main(void)
{
  k = 1;
  r = 0;
  switch (k) {
    case 0: r = r + 1;
    case 1: r = r + 10;
    case 2: r = r + 100;
    default: r = r + 1000;
  }
  return 0;
}
