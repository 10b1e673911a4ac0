int r;

int first_pair(int target)
{
  int i, j;
  for (i = 1; i < 10; i++) {
    for (j = i; j < 10; j++) {
      if (i * j == target) return i * 100 + j;
    }
  }
  return 0;
}

int main(void)
{
  r = first_pair(24);
  return 0;
}
