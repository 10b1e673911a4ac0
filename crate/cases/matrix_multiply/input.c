int a[2][2] = {{1, 2}, {3, 4}};
int b[2][2] = {{5, 6}, {7, 8}};
int c[2][2];
int i, j, k;

int main(void)
{
  for (i = 0; i < 2; i++) {
    for (j = 0; j < 2; j++) {
      c[i][j] = 0;
      for (k = 0; k < 2; k++) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  }
  return 0;
}
