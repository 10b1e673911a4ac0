extern double sensor(int ch);
double v;

int main(void)
{
  v = sensor(1) + sensor(2);
  return 0;
}
