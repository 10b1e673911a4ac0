int m[3][3];
int i, j, trace;

int main(void)
{
  for (i = 0; i < 3; i++) {
    for (j = 0; j < 3; j++) m[i][j] = i * 3 + j;
  }
  trace = m[0][0] + m[1][1] + m[2][2];
  return 0;
}
