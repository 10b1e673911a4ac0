const int limit = 4;

int main(void)
{
  return limit;
}
