int g;

void clamp(int v)
{
  if (v > 10) {
    g = 10;
    return;
  }
  g = v;
}

int main(void)
{
  clamp(42);
  return g;
}
