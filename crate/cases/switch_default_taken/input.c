int k, r;

int main(void)
{
  k = 9;
  switch (k) {
    case 0: r = 1; break;
    case 1: r = 2; break;
    default: r = 3;
  }
  return 0;
}
