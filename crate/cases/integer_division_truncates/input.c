int q1, q2, r1, r2;

int main(void)
{
  q1 = 7 / 2;
  q2 = -7 / 2;
  r1 = 7 % 3;
  r2 = -7 % 3;
  return 0;
}
