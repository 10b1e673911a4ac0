int n;
double avg;

int main(void)
{
  n = 7;
  avg = n / 2.0;
  return 0;
}
