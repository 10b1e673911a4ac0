int i;

int main(void)
{
  i = 0;
  return 0;
}
