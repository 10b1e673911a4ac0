int a[6] = {5, 2, 9, 1, 7, 3};
int i, j, t, swapped;

int main(void)
{
  for (i = 0; i < 5; i++) {
    swapped = 0;
    for (j = 0; j < 5 - i; j++) {
      if (a[j] > a[j + 1]) {
        t = a[j];
        a[j] = a[j + 1];
        a[j + 1] = t;
        swapped = 1;
      }
    }
    if (swapped == 0) break;
  }
  return a[0];
}
