double r;

double blend(int k, double a, double b)
{
  return a * (double)k + b;
}

int main(void)
{
  r = blend(3, 0.5, 0.25);
  return 0;
}
