unsigned char ll_i, tmp;

int main(void)
{
  ll_i = 3;
  tmp = 0;
  while (ll_i != tmp) {
    tmp++;
  }
  return 0;
}
