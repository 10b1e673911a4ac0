int k, r;

int main(void)
{
  k = 7;
  r = 5;
  switch (k) {
    case 0: r = 1;
    default: ;
  }
  return 0;
}
