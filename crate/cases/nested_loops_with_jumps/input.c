int i, j, count;

int main(void)
{
  count = 0;
  for (i = 0; i < 5; i++) {
    for (j = 0; j < 5; j++) {
      if (j > i) break;
      if ((i + j) % 2 == 1) continue;
      count++;
    }
  }
  return count;
}
