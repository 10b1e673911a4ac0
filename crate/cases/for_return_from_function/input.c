int a[6] = {4, 8, 15, 16, 23, 42};
int at;

int find(int v)
{
  int i;
  for (i = 0; i < 6; i++) {
    if (a[i] == v) return i;
  }
  return -1;
}

int main(void)
{
  at = find(16);
  return 0;
}
