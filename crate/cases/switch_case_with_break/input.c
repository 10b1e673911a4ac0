int k, r;

int main(void)
{
  k = 2;
  switch (k) {
    case 1: r = 10; break;
    case 2: r = 20; break;
    case 3: r = 30; break;
    default: r = 0;
  }
  return 0;
}
