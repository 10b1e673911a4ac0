struct Inner {
  int a;
  char tag;
};
struct Outer {
  struct Inner in;
  int w;
};
struct Outer o;

int main(void)
{
  o.in.a = 4;
  o.in.tag = 'z';
  o.w = o.in.a + 1;
  return 0;
}
