int i;

int main(void)
{
  for (i = 0; ; i++) {
    if (i == 6) break;
  }
  return i;
}
