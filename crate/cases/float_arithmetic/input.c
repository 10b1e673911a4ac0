float f, g;

int main(void)
{
  f = 0.5f;
  g = f * 3.0f + 1.0f;
  return 0;
}
