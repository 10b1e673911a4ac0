int i;

int main(void)
{
  while (i < 3) {
    break;
  }
  return 0;
}
