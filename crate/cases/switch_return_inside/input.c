int r;

int classify(int v)
{
  switch (v) {
    case 0: return 100;
    case 1: return 200;
    default: return 300;
  }
}

int main(void)
{
  r = classify(1) + classify(5);
  return 0;
}
