struct Point {
  int x;
  int y;
};
struct Point p;

int main(void)
{
  p.x = 3;
  p.y = p.x * 2;
  return 0;
}
