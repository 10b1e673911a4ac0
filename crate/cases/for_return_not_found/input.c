int a[3] = {1, 2, 3};
int at;

int find(int v)
{
  int i;
  for (i = 0; i < 3; i++) {
    if (a[i] == v) return i;
  }
  return -1;
}

int main(void)
{
  at = find(7);
  return 0;
}
