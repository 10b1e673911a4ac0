int total;

void add(int k)
{
  total = total + k;
}

int main(void)
{
  total = 0;
  add(3);
  add(4);
  add(5);
  return total;
}
