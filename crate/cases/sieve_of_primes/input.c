int composite[50];
int i, j, count;

int main(void)
{
  for (i = 0; i < 50; i++) composite[i] = 0;
  count = 0;
  for (i = 2; i < 50; i++) {
    if (composite[i]) continue;
    count++;
    for (j = i * i; j < 50; j = j + i) composite[j] = 1;
  }
  return count;
}
