int next, skip, empty;

int main(void)
{
  next = 1;
  skip = next + 1;
  empty = skip * 2;
  return 0;
}
