int v;

void set(int *p, int k)
{
  *p = k * 2;
}

int main(void)
{
  set(&v, 21);
  return v;
}
