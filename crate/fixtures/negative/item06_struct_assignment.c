struct P {
  int x;
  int y;
};
struct P a, b;

int main(void)
{
  a = b;
  return 0;
}
